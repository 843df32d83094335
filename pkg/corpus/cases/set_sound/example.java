import android.media.AudioAttributes;

public class Example {
    private static final int USAGE = 5;

    void ring(android.app.Notification.Builder builder, android.net.Uri uri) {
        if (android.os.Build.VERSION.SDK_INT >= android.os.Build.VERSION_CODES.LOLLIPOP) {
            AudioAttributes attrs = makeAttrs(USAGE);
            builder.setSound(uri, attrs);
        } else {
            builder.setSound(uri);
        }
    }

    static AudioAttributes makeAttrs(int usage) {
        return buildAttrs(usage);
    }

    static AudioAttributes buildAttrs(int usage) {
        return new AudioAttributes.Builder().setUsage(usage).build();
    }
}
