import android.media.AudioAttributes;
public class Notifier {
    void ring(android.app.Notification.Builder builder, android.net.Uri tone) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            builder.setSound(tone, makeAttrs(5));
        } else {
            builder.setSound(tone);
        }
    }

    static AudioAttributes makeAttrs(int usage) {
        return buildAttrs(usage);
    }

    static AudioAttributes buildAttrs(int usage) {
        return new AudioAttributes.Builder().setUsage(usage).build();
    }
}
