import android.media.AudioAttributes;

public class OwnHelper {
    void ring(android.app.Notification.Builder builder, android.net.Uri tone) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            builder.setSound(tone, makeAttrs(5));
        } else {
            builder.setSound(tone);
        }
    }

    static AudioAttributes makeAttrs(int usage) {
        return null;
    }

    static AudioAttributes buildAttrs(int usage) {
        return new AudioAttributes.Builder().setUsage(usage).build();
    }
}
