import android.media.AudioAttributes;

public class OwnHelper {
    void ring(android.app.Notification.Builder builder, android.net.Uri tone) {
        builder.setSound(tone);
    }

    static AudioAttributes makeAttrs(int usage) {
        return null;
    }
}
